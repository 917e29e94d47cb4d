import javax.ejb.SessionBean;
import javax.ejb.SessionContext;

public class MyBean {

    public void ejbCreate() {
    }

    public void ejbRemove() {
    }
}
